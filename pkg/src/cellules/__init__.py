"""Set partitions, cellule dimensions, the ball-box model and component lists."""

from src.cellules.ballbox import (
    BallBoxConfig,
    MergeRule,
    MergeStep,
    apply_merge_rule,
    ballbox_config_from_partition,
    ballbox_dimension,
    merge_to_indiscrete,
    random_rule_witness,
)
from src.cellules.components import (
    components_complete,
    components_cycle,
    components_multipartite,
)
from src.cellules.dimension import (
    cellule_dimension,
    delta,
    dimension_profile,
    is_d_heavy,
)
from src.cellules.order import (
    CelluleRelation,
    Exactness,
    MaximalCellules,
    RelationStatus,
    cellule_order_relations,
    maximal_cellules_known,
)
from src.cellules.partitions import SetPartition, bell_number, enumerate_partitions

__all__ = [
    "BallBoxConfig",
    "CelluleRelation",
    "Exactness",
    "MaximalCellules",
    "MergeRule",
    "MergeStep",
    "RelationStatus",
    "SetPartition",
    "apply_merge_rule",
    "ballbox_config_from_partition",
    "ballbox_dimension",
    "bell_number",
    "cellule_dimension",
    "cellule_order_relations",
    "components_complete",
    "components_cycle",
    "components_multipartite",
    "delta",
    "dimension_profile",
    "enumerate_partitions",
    "is_d_heavy",
    "maximal_cellules_known",
    "merge_to_indiscrete",
    "random_rule_witness",
]
