"""
Exceções do semilm
Hierarquia única de erros levantados pela biblioteca
"""

from typing import List, Optional


class SemiLMError(Exception):
    """Erro base de todo o pacote"""


class SchemeError(SemiLMError):
    """Tabela de coeficientes inválida, nome desconhecido ou família mal parametrizada"""


class ConfigError(SemiLMError):
    """Configuração inválida (arquivo key=value, flags ou modelos pydantic)"""


class GridError(SemiLMError):
    """Malha incompatível com o problema ou com a largura do stencil"""


class LinearSolveError(SemiLMError):
    """Solver linear deslocado não atingiu a tolerância"""

    def __init__(self, message: str, residual: float, iterations: int):
        super().__init__(f"{message} (resíduo={residual:.3e}, iterações={iterations})")
        self.residual = residual
        self.iterations = iterations


class RootFindingError(SemiLMError):
    """Aberth-Ehrlich não convergiu"""

    def __init__(self, message: str, residuals: List[float]):
        worst = max(residuals) if residuals else float('nan')
        super().__init__(f"{message} (pior resíduo={worst:.3e})")
        self.residuals = residuals


class ConvergenceError(SemiLMError):
    """Iteração de ponto fixo do corretor não convergiu"""

    def __init__(self, message: str, residual: float, iterations: int):
        super().__init__(f"{message} (atualização relativa={residual:.3e}, iterações={iterations})")
        self.residual = residual
        self.iterations = iterations


class StartupError(SemiLMError):
    """Não foi possível gerar os valores iniciais do histórico"""


class IntegrationError(SemiLMError):
    """Violação do contrato de integração (passo não uniforme, tempo final inválido)"""


class NonFiniteStateError(IntegrationError):
    """Estado com NaN/Inf detectado durante a integração"""

    def __init__(self, message: str, last_good_index: int, t: Optional[float] = None):
        super().__init__(f"{message} (último estado válido: passo {last_good_index})")
        self.last_good_index = last_good_index
        self.t = t
