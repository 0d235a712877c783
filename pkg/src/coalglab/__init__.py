"""Exact computation with finite-dimensional coalgebras and comodules."""
