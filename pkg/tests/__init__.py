"""Unit and CLI tests for arcspline."""
