"""
Output Helpers
Atomic writes and JSON / CSV / human renderings of command results
"""
import io
import os
import csv
import json
import math
import tempfile

import click
import numpy as np


def _default(value):
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return float(value)
    if isinstance(value, np.ndarray):
        return value.tolist()
    if hasattr(value, 'to_dict'):
        return value.to_dict()
    if hasattr(value, 'value'):
        return value.value
    raise TypeError(f"Cannot serialize {type(value).__name__}")


def _clean(value):
    """Non-finite floats become strings so the document stays strict JSON"""
    if isinstance(value, float) and not math.isfinite(value):
        return str(value)
    if isinstance(value, dict):
        return {k: _clean(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_clean(v) for v in value]
    return value


def to_json(data):
    data = json.loads(json.dumps(data, default=_default))
    return json.dumps(_clean(data), indent=2, allow_nan=False) + '\n'


def to_csv(rows):
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    for row in rows:
        writer.writerow(row)
    return buffer.getvalue()


def to_human(data, indent=0):
    """Indented key: value listing of a nested mapping"""
    lines = []
    pad = '  ' * indent
    for key, value in data.items():
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            lines.append(to_human(value, indent + 1).rstrip('\n'))
        elif isinstance(value, (list, tuple)) and value and isinstance(value[0], dict):
            lines.append(f"{pad}{key}:")
            for item in value:
                lines.append(f"{pad}  - " + ', '.join(f"{k}={_fmt(v)}" for k, v in item.items()))
        elif isinstance(value, (list, tuple)):
            lines.append(f"{pad}{key}: [" + ', '.join(_fmt(v) for v in value) + ']')
        else:
            lines.append(f"{pad}{key}: {_fmt(value)}")
    return '\n'.join(lines) + '\n'


def _fmt(value):
    if isinstance(value, float):
        return f"{value:.10g}"
    return str(value)


def atomic_write(path, text):
    """Write text to path through a temporary file in the same directory and os.replace"""
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    fd, tmp_path = tempfile.mkstemp(dir=directory, prefix='.steincert-', suffix='.tmp')
    try:
        with os.fdopen(fd, 'w', encoding='utf-8', newline='') as handle:
            handle.write(text)
        os.replace(tmp_path, path)
    except BaseException:
        if os.path.exists(tmp_path):
            os.remove(tmp_path)
        raise


def emit(text, output_path=None):
    """Send a rendered document to output_path, or to stdout without one"""
    if output_path:
        atomic_write(output_path, text)
    else:
        click.echo(text, nl=False)


def render(run_config, data, rows=None):
    """
    Render a result in the configured format

    Args:
        run_config: RunConfig
        data: JSON-ready mapping
        rows: CSV rows (header first); defaults to key/value pairs of data
    """
    fmt = run_config.format.value
    if fmt == 'json':
        return to_json(data)
    if fmt == 'csv':
        if rows is None:
            flat = json.loads(to_json(data))
            rows = [('key', 'value')] + [(k, json.dumps(v) if isinstance(v, (dict, list)) else v)
                                         for k, v in flat.items()]
        return to_csv(rows)
    return to_human(json.loads(to_json(data)))
