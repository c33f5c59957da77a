"""Shared store for the one-line acceptance results."""

LINES = {}


def record(key, ok, detail, seconds):
    line = f"criterion {key}: {'PASS' if ok else 'FAIL'} ({detail}; {seconds:.2f}s)"
    LINES[key] = line
    print(line)
    return line
