"""
WHQ Engine - Tests Package
"""
