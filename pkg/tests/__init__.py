"""Test suite for quiver-wallcross."""
