import json
import os
import tempfile

try:
    from .hamgen_errors import GraphError
    from .hamgen_gf2 import GF2Matrix
    from .hamgen_graph import new_graph
    from .hamgen_settings import log
except ImportError:
    from hamgen_errors import GraphError
    from hamgen_gf2 import GF2Matrix
    from hamgen_graph import new_graph
    from hamgen_settings import log


FIXTURE_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "fixtures")
LAYOUT_SUFFIX = ".layout.json"


def atomic_write(path, text):
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    fd, tmp_path = tempfile.mkstemp(prefix=".hamgen-", dir=directory)
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
            fh.flush()
            os.fsync(fh.fileno())
        os.replace(tmp_path, path)
    finally:
        if os.path.exists(tmp_path):
            os.remove(tmp_path)


def _content_lines(text):
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield number, line


def format_graph(g, comment=None):
    lines = []
    if comment:
        lines.append("# {}".format(comment))
    lines.append("{} {}".format(g.n, g.f1))
    lines.extend("{} {}".format(u, v) for u, v in g.edges)
    return "\n".join(lines) + "\n"


def _ints(line, number, count):
    parts = line.split()
    if len(parts) != count:
        raise GraphError("line {}: expected {} integers, got {!r}".format(number, count, line))
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise GraphError("line {}: not an integer in {!r}".format(number, line)) from None


def parse_graph(text):
    lines = list(_content_lines(text))
    if not lines:
        raise GraphError("graph text is empty")
    number, header = lines[0]
    n, m = _ints(header, number, 2)
    if n < 0 or m < 0:
        raise GraphError("line {}: negative size in header {!r}".format(number, header))
    body = lines[1:]
    if len(body) != m:
        raise GraphError("header declares {} edges, found {}".format(m, len(body)))
    edges = [tuple(_ints(line, number, 2)) for number, line in body]
    return new_graph(n, edges)


def read_graph(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except UnicodeDecodeError as exc:
        raise GraphError("{} is not UTF-8 text: {}".format(path, exc)) from None
    return parse_graph(text)


def write_graph(path, g, comment=None):
    atomic_write(path, format_graph(g, comment))


def layout_path(graph_path):
    return graph_path + LAYOUT_SUFFIX


def write_layout(graph_path, layout):
    payload = {str(k): int(v) for k, v in layout.items()}
    atomic_write(layout_path(graph_path), json.dumps(payload, indent=2, sort_keys=True) + "\n")


def read_layout(graph_path, n=None):
    """Name-to-vertex map from the sidecar, or None when absent or unreadable.

    Present entries must be vertex indices, in ``range(n)`` when ``n`` is given.
    """
    path = layout_path(graph_path)
    if not os.path.exists(path):
        return None
    try:
        with open(path, "r", encoding="utf-8") as fh:
            payload = json.load(fh)
    except (OSError, ValueError) as exc:
        log("ignoring unreadable layout {}: {}".format(path, exc))
        return None
    if not isinstance(payload, dict):
        log("ignoring layout {}: expected a JSON object".format(path))
        return None
    top = "n-1" if n is None else n - 1
    layout = {}
    for name, index in payload.items():
        if isinstance(index, bool) or not isinstance(index, int):
            raise GraphError(
                "layout {}: {!r} maps to {!r}, not a vertex index".format(path, name, index)
            )
        if index < 0 or (n is not None and index >= n):
            raise GraphError(
                "layout {}: {!r} maps to {}, outside 0..{}".format(path, name, index, top)
            )
        layout[str(name)] = index
    return layout


def format_matrix(m):
    lines = [" ".join(m.col_labels)]
    for label, bits in zip(m.row_labels, m.row_strings()):
        lines.append("{} {}".format(bits, label))
    return "\n".join(lines) + "\n"


def parse_matrix(text):
    lines = list(_content_lines(text))
    if not lines:
        raise ValueError("matrix text is empty")
    col_labels = lines[0][1].split()
    rows, row_labels = [], []
    for number, line in lines[1:]:
        bits, _, label = line.partition(" ")
        if len(bits) != len(col_labels) or set(bits) - {"0", "1"}:
            raise ValueError(
                "line {}: expected {} bits, got {!r}".format(number, len(col_labels), bits)
            )
        rows.append([int(ch) for ch in bits])
        row_labels.append(label.strip() or "r{}".format(len(row_labels)))
    return GF2Matrix(rows, row_labels, col_labels)


def read_matrix(path):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_matrix(fh.read())


def fixture_path(name):
    return os.path.join(FIXTURE_DIR, name)


def read_fixture(name):
    return read_matrix(fixture_path(name))
