from src.oracle.exact import (
    BudgetExceeded,
    hamiltonian_exact,
    hamiltonian_path_exact,
    longest_path_exact,
    min_leaf_spanning_tree_exact,
)
