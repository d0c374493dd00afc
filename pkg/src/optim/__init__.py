"""Numerical estimation of sharp constants."""
from src.optim.ratio_search import (
    GradientCheck,
    SearchConfig,
    SearchReport,
    check_gradient,
    finite_difference_gradient,
    maximize_ratio,
    ratio_gradient,
)
from src.optim.simplex import SimplexMaximum, is_simplex_point, maximize_fq, project_to_interior, project_to_simplex

__all__ = [
    'GradientCheck', 'SearchConfig', 'SearchReport', 'check_gradient', 'finite_difference_gradient',
    'maximize_ratio', 'ratio_gradient', 'SimplexMaximum', 'is_simplex_point', 'maximize_fq',
    'project_to_interior', 'project_to_simplex',
]
