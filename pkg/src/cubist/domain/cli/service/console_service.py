from typing import Iterable, Optional, Sequence

from rich.console import Console
from rich.panel import Panel
from rich.table import Table
from rich.theme import Theme

from cubist.core.service.base_service import Service

CUBIST_THEME = Theme(
	{
		"text": "#cdd6f4",
		"success": "#a6e3a1",
		"error": "#f38ba8",
		"warning": "#f9e2af",
		"info": "#94e2d5",
		"primary": "#89b4fa",
		"muted": "#6c7086",
		"inactive_border": "#45475a",
	}
)


class ConsoleService(Service):
	"""Themed console for human-facing messages.

	Writes to stderr so that artifacts printed on stdout stay machine readable.
	"""

	_console: Console

	async def boot(self, **kwargs) -> None:
		self._console = Console(theme=CUBIST_THEME, stderr=True)

	@property
	def console(self) -> Console:
		"""Usage: `service.console.print(renderable)`"""
		return self._console

	def print(self, *args, **kwargs) -> None:
		self._console.print(*args, **kwargs)

	def print_success(self, message: str, **kwargs) -> None:
		"""Usage: `service.print_success("certificate verified")`"""
		self._console.print(f"[success]{message}[/success]", **kwargs)

	def print_warning(self, message: str, **kwargs) -> None:
		self._console.print(f"[warning]{message}[/warning]", **kwargs)

	def print_info(self, message: str, **kwargs) -> None:
		self._console.print(f"[info]{message}[/info]", **kwargs)

	def panel(self, *args, **kwargs) -> Panel:
		"""Create a panel with left-aligned title and the inactive border style.

		Usage: `panel = service.panel("3 hyperplanes", title="hyperplanes")`
		"""
		kwargs.setdefault("title_align", "left")
		kwargs.setdefault("subtitle_align", "left")
		kwargs.setdefault("border_style", "inactive_border")
		return Panel(*args, **kwargs)

	def print_panel(self, *args, **kwargs) -> None:
		self._console.print(self.panel(*args, **kwargs))

	def print_error_panel(self, *args, **kwargs) -> None:
		"""Usage: `service.print_error_panel(str(e), title="NotMedianError")`"""
		kwargs.setdefault("border_style", "error")
		self._console.print(self.panel(*args, **kwargs))

	def print_success_panel(self, *args, **kwargs) -> None:
		kwargs.setdefault("border_style", "success")
		self._console.print(self.panel(*args, **kwargs))

	def print_table(self, title: str, columns: Sequence[str], rows: Iterable[Sequence[object]], caption: Optional[str] = None) -> None:
		"""Render rows as a rich table.

		Usage: `service.print_table("levels", ["level", "vertices"], [(0, 12), (1, 4)])`
		"""
		table = Table(title=title, caption=caption, title_justify="left", border_style="inactive_border")
		for column in columns:
			table.add_column(column, style="text")
		for row in rows:
			table.add_row(*(str(cell) for cell in row))
		self._console.print(table)
