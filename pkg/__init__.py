"""
Toolkit for near-extremal ternary and quaternary self-dual codes.
"""
