"""Configuration storage layer"""
