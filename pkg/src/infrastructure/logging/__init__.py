"""Audit logging storage layer"""
