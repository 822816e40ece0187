"""Tests that are not run by default.

They enumerate every rotation system of many small graphs, and take long.
"""
