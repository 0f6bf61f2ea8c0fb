"""Tests for the radar ambiguity toolkit."""
