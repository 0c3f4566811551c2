from .observer import BenchRow, Observer

__all__ = ["Observer", "BenchRow"]
