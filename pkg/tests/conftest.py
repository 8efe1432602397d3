import os

import pytest

from e6cs import characters


@pytest.fixture(scope="session", autouse=True)
def session_cache(tmp_path_factory):
    """Keep the character cache inside the test session's tmp directory."""
    path = tmp_path_factory.mktemp("character-cache")
    old = os.environ.get(characters.CACHE_ENV)
    os.environ[characters.CACHE_ENV] = str(path)
    characters.clear_memory_cache()
    yield path
    characters.clear_memory_cache()
    if old is None:
        os.environ.pop(characters.CACHE_ENV, None)
    else:
        os.environ[characters.CACHE_ENV] = old
