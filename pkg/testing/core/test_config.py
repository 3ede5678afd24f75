import pytest

from zerosum import config
from zerosum.progress import track


def test_budget_replace():
    budget = config.Budget()
    smaller = budget.replace(node_limit=10, jobs=None)
    assert smaller.node_limit == 10
    assert smaller.jobs == budget.jobs
    assert budget.node_limit == 10 ** 9
    with pytest.raises(TypeError):
        budget.replace(colour=1)
    assert set(budget.as_dict()) == set(config.Budget._fields_)

def test_from_environ():
    budget = config.from_environ({'ZEROSUM_MAX_SIZE': '12',
                                  'ZEROSUM_JOBS': '3',
                                  'ZEROSUM_NODE_LIMIT': ''})
    assert budget.max_size == 12
    assert budget.jobs == 3
    assert budget.node_limit == config.Budget().node_limit
    with pytest.raises(ValueError):
        config.from_environ({'ZEROSUM_MAX_ORDER': 'many'})

def test_kernel_switch():
    assert config.kernel_disabled({'ZEROSUM_NO_KERNEL': '1'})
    assert not config.kernel_disabled({})

def test_get_budget():
    assert config.get_budget() is config.DEFAULT
    budget = config.Budget(max_size=3)
    assert config.get_budget(budget) is budget

def test_track_passthrough():
    items = [1, 2, 3]
    assert track(items) is items
    assert list(track(iter(items), 3, 'x', enabled=True)) == items
