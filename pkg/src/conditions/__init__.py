from src.conditions.checker import (
    ClassicalKind,
    ConditionReport,
    Precondition,
    Violation,
    check_classical,
    check_hamilton_condition,
    check_tree_condition,
    tree_threshold,
)
