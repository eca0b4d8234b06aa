"""
Exact Linear Algebra Tests

Coverage:
- Gaussian rational scalars and their text forms
- Qubit rays on the projective line and their orthogonals
- Rank, nullspace and reduced row echelon form
- Incremental span tracking with undo
- Characteristic polynomial and the exact PSD test
"""
