"""Business logic services with dependency injection"""
