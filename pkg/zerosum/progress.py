try:
    from tqdm import tqdm
except ImportError:
    tqdm = None


def track(iterable, total=None, desc=None, enabled=False):
    """Wrap 'iterable' in a tqdm bar when asked to and tqdm is installed."""
    if not enabled or tqdm is None:
        return iterable
    return tqdm(iterable, total=total, desc=desc, ascii=True,
                dynamic_ncols=True, smoothing=0.0, leave=False)
