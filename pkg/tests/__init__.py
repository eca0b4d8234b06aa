"""
upb-lab Test Suite

Unit tests are organized by library layer:
- 01_exact_linalg: Exact scalars, matrices, rank, nullspace, PSD
- 02_uom_model: Labels, UOM specs, codec, catalog, sampling, invariants, lint
- 03_unextend: Splits, set operations, the assignment search
- 04_pptstate: Complement states, partial transposes, range-criterion certificates
- 05_geupb: Bipartition checks and tensor constructions
- 06_structure_checks: o-numbers, maxsum, exclusion conditions, classification
- 07_error_codes: Error code coverage
- 08_config: upblab.toml loading
- 09_services: Lab facade and the reproduction suite

integration/ drives the `upb-lab` CLI end to end.
"""
