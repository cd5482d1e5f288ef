from src.field.correlator import (
    MODE_VOLUME,
    ModeLabel,
    PlateKernel,
    TMatrixElement,
    free_wightman_k,
    image_wightman_k,
    lippmann_schwinger_k,
    mirror,
    plane_wave_mode,
    plate_factor,
    plate_kernel,
    tmatrix_plate,
)

__all__ = [
    "MODE_VOLUME",
    "ModeLabel",
    "PlateKernel",
    "TMatrixElement",
    "free_wightman_k",
    "image_wightman_k",
    "lippmann_schwinger_k",
    "mirror",
    "plane_wave_mode",
    "plate_factor",
    "plate_kernel",
    "tmatrix_plate",
]
