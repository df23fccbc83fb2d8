from rich.console import Console
from rich.theme import Theme

theme = Theme(
    {
        "passed": "green",
        "failed": "red",
    }
)

console = Console(theme=theme)
error_console = Console(theme=theme, stderr=True)
