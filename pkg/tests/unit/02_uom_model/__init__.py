"""
UOM Model Tests

Coverage:
- Labels 0, 1, x, x' and constraint syntax
- UomSpec shape checks, force_equal and without_constraint
- JSON codec and the embedded catalog
- Seeded instantiation with rejection sampling
- Inequivalence invariants and the column symmetry group
- Lint warnings

Related Doc: docs/en/02-model/01-uom.md
"""
