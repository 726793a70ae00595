"""Order-preserving parallel map; parallelism is a flag, not a semantic."""

from concurrent.futures import ThreadPoolExecutor


def parallel_map(fn, items, jobs=1):
    """Map fn over items with the given worker count; output order always
    matches input order, so results are identical for any jobs value."""
    items = list(items)
    if jobs <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=jobs) as ex:
        return list(ex.map(fn, items))
