"""Renorming constructions around the distinguished vector e1"""
