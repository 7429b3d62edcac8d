"""
semilm - Integradores Multipasso Semi-Implícitos
Módulo principal
"""

__version__ = "1.0.0"
__author__ = "Equipe semilm"
__description__ = "Integradores multipasso semi-implícitos de alta ordem para sistemas rígidos du/dt = H(t, u, u/ε)"
