"""
Исключения расчета точности.
"""

from core.exceptions import DiamondSimError


class SearchWindowError(DiamondSimError):
    """Максимум точности лежит на границе окна поиска"""

    def __init__(self, boundary_time=None, window=None, message=None):
        self.boundary_time = boundary_time
        self.window = window
        if not message:
            if boundary_time is not None and window is not None:
                message = (
                    f"Максимум точности на границе окна: t = {boundary_time:.4e} с, "
                    f"окно [{window[0]:.4e}, {window[1]:.4e}] с"
                )
            else:
                message = "Максимум точности на границе окна поиска"
        super().__init__(message, boundary_time=boundary_time, window=window)
