"""satlab - transfer systems and linear isometries universes on finite Abelian groups"""

__version__ = "0.3.0"
