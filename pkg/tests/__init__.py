"""Test suite for the coalgebra workbench."""
