"""
CLI Integration Tests

Coverage:
- Every `upb-lab` command through typer's CliRunner
- Global options placed before the command name (--seed, --json, --out, --config)
- Exit codes: 0 ok, 1 claim failure, 2 usage error, 3 budget exceeded
"""
