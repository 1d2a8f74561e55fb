"""Partially ordered patterns in permutations."""
