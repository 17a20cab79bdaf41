"""Exact geometry of polytope unit balls"""
