"""Dependency injection container and configuration"""
