"""Real geometric quantization of almost toric 4-manifolds from their base diagrams."""

__version__ = "0.1.0"
