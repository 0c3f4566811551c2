"""OMNITIGS: Linear-time maximal omnitig enumeration for strongly connected graphs"""
