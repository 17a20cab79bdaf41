"""Diametral-point diagnostics"""
