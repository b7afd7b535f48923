"""
IG-ODD - Excepciones

Cada error lleva el código de salida que usa la CLI:
2 entrada inválida, 3 verificación fallida, 4 límite de recursos.
"""


class IGOddError(Exception):
    """Error base del proyecto"""
    exit_code = 1

    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail


# =====================================================
# ENTRADA INVÁLIDA (exit 2)
# =====================================================
class InvalidInputError(IGOddError):
    exit_code = 2


class InvalidSpaceError(InvalidInputError):
    pass


class InvalidWindowError(InvalidInputError):
    pass


class InvalidPartitionError(InvalidInputError):
    pass


class OrbitMismatchError(InvalidInputError):
    """La clase no está en la órbita que exige el paso pedido"""


# =====================================================
# VERIFICACIÓN (exit 3)
# =====================================================
class VerificationError(IGOddError):
    exit_code = 3


# =====================================================
# RECURSOS (exit 4)
# =====================================================
class ResourceLimitError(IGOddError):
    exit_code = 4
