"""
Tests package.

Unit and integration tests for the Co-NOMA optimizer.
"""
