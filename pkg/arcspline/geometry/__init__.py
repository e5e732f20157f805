from .symplectic2d import Vec2, dot, norm, rotate, skew, tilde  # noqa: F401
