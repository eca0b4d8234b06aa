"""
Services Tests

Coverage:
- Lab facade wiring and lazy reproduce service
- CatalogService: resolution by name and by file, drop, lint, invariants, compare
- AnalysisService: verdicts per split, states, structure, fuzz
- ReproduceService: claim selection, failure recording, report serialization

Related Doc: docs/en/04-runtime/03-reproduce.md
"""
