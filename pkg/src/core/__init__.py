"""Core interfaces, models, errors and Chebyshev machinery"""
