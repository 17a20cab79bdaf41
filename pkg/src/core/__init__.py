"""Core types: sparse vectors, space descriptors and the norm dispatch"""
