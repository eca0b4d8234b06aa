"""
Genuinely Entangled Complement Tests

Coverage:
- UPB verdicts across every bipartition
- The almost-GE test on 4x4 cuts
- 2xN auto-fail witnesses
- Tensor products, cyclic relabeling and triple tensors of multipartite sets

Related Doc: docs/en/03-analysis/01-search.md
"""
