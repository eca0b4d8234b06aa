"""
Unextendibility Tests

Coverage:
- Party split notation, presets and bipartitions
- Orthogonality checks and set operations (drop, permute, local unitaries)
- UPB verdicts of the catalog families under the standard splits
- Orthogonal product vector enumeration, finite and infinite
- Drop-one counts and sweeps
- Agreement with an unpruned brute-force search
- Budget, orthogonality and arity guards

Related Doc: docs/en/03-analysis/01-search.md
"""
