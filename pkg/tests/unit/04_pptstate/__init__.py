"""
PPT State Tests

Coverage:
- Complement states: trace, rank, Hermiticity
- Exact partial transposes across unions of parties
- PPT verdicts across every bipartition
- Range-criterion certificates, conclusive and inconclusive
- Count-equivalence of sets under local operations

Related Doc: docs/en/03-analysis/01-search.md
"""
