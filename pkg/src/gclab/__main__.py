from gclab.cli.app import app

app()
