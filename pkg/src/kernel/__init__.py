from .kernel import Kernel, create_kernel

__all__ = ["Kernel", "create_kernel"]
