"""
Error Code Coverage Tests

Related Doc: docs/en/04-runtime/01-error-codes.md

This module ensures all documented error codes can be triggered.
"""
