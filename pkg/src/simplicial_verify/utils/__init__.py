from .file_utils import load_json, load_txt, save_json

__all__ = [
    "load_json",
    "load_txt",
    "save_json",
]
