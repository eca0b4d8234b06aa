"""
Config System Tests

Related Doc: docs/en/04-runtime/02-configuration.md

Coverage:
- upblab.toml sections and defaults
- Validation failures surfaced as ValueError
- Discovery by ascending from the working directory
"""
