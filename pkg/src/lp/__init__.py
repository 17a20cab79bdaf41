"""Dense linear programming engine"""
from src.lp.simplex import Constraint, LinearProgram, LpSolution, LpStatus, Relation, solve

__all__ = ["Constraint", "LinearProgram", "LpSolution", "LpStatus", "Relation", "solve"]
