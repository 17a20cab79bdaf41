"""Projective tensor products of polyhedral spaces"""
