"""canonstrip Unit test suite."""
import pytest

from canonstrip import Workbench


class UnitTest:
    """Base class for canonstrip unit tests."""

    @pytest.fixture(autouse=True)
    async def set_up(self):
        """Setup runs before all test cases."""
        self.workbench = Workbench(max_workers=2, batch_size=3)
        yield
        await self.workbench.close()
