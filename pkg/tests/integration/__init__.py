"""canonstrip Integration test suite."""
import pytest

from canonstrip import Workbench


class IntegrationTest:
    """Base class for canonstrip integration tests.

    Integration tests run the full computations with the default configuration.

    """

    @pytest.fixture(autouse=True)
    async def set_up(self):
        """Setup runs before all test cases."""
        self.workbench = Workbench()
        yield
        await self.workbench.close()
