"""
dlab - Diametral Lab
Renormings, absolute sums and projective tensors of finite-dimensional spaces,
with certified nabla, DPoint and Daugavet diagnostics
"""

__version__ = "1.0.0"
