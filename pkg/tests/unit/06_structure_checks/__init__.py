"""
Structure Check Tests

Coverage:
- Column multiplicities, o-numbers and the pair bound
- The pair-product maximum and its exhaustive oracle
- Exclusion conditions on eight-row four-qubit sets
- Soundness fuzzing of the conditions against the search
- Classification clause membership of the named families

Related Doc: docs/en/03-analysis/01-search.md
"""
