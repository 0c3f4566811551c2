from .corpus import Corpus, GraphKind, GraphSample, builtin_samples

__all__ = ["Corpus", "GraphKind", "GraphSample", "builtin_samples"]
