"""Warm/cool color-temperature decolorization toolkit.

Converts RGB images to grayscale by blending warm (red over green) and
cool (blue) luminance estimates so that perceptually warm colors come out
brighter, with baseline color-space extractors, contrast-preservation
metrics, tone-mapping operators, and a per-pixel benchmark harness. The
hot kernels run in a compiled extension when available and fall back to
NumPy otherwise.
"""

from .backend import (
    THREADS_ENV,
    active_backend,
    available_backends,
    compiled_available,
)
from .bench import BenchResult, format_table, run_benchmark
from .codec import CodecError, dequantize_u8, load_image, quantize_u8, save_image
from .colorspaces import (
    METHOD_NAMES,
    LabColor,
    delta_e76,
    hsv_v,
    lab_image,
    lab_lightness,
    luma_weighted,
    luminance_image,
    rgb_to_lab,
)
from .core import (
    DEFAULT_PARAMS,
    DecolorParams,
    PlanarImage,
    RgbPixel,
    blue_luminance,
    cool_luminance,
    decolor_image,
    decolor_pixel,
    red_green_luminance,
    warm_luminance,
    white_luminance,
)
from .metrics import (
    TAU_SWEEP,
    MetricReport,
    PairSampleConfig,
    TauScore,
    ccfr,
    ccpr,
    escore,
    evaluate,
    write_sweep_csv,
)
from .tonemap import (
    LocalHistogramGrid,
    SigmoidCurve,
    apply_local_lhe,
    apply_sigmoid,
    reinstate_color,
    tonemap_image,
)

__version__ = "0.1.0"

__all__ = [
    "THREADS_ENV",
    "active_backend",
    "available_backends",
    "compiled_available",
    "BenchResult",
    "format_table",
    "run_benchmark",
    "CodecError",
    "load_image",
    "save_image",
    "quantize_u8",
    "dequantize_u8",
    "METHOD_NAMES",
    "LabColor",
    "delta_e76",
    "hsv_v",
    "lab_image",
    "lab_lightness",
    "luma_weighted",
    "luminance_image",
    "rgb_to_lab",
    "DEFAULT_PARAMS",
    "DecolorParams",
    "PlanarImage",
    "RgbPixel",
    "white_luminance",
    "blue_luminance",
    "red_green_luminance",
    "warm_luminance",
    "cool_luminance",
    "decolor_pixel",
    "decolor_image",
    "TAU_SWEEP",
    "MetricReport",
    "PairSampleConfig",
    "TauScore",
    "ccpr",
    "ccfr",
    "escore",
    "evaluate",
    "write_sweep_csv",
    "SigmoidCurve",
    "LocalHistogramGrid",
    "apply_sigmoid",
    "apply_local_lhe",
    "reinstate_color",
    "tonemap_image",
]
