"""Core infrastructure package"""
