"""WSGI entry point for production deployment."""
from fpsrewrite import create_app

# Create application instance
app = create_app()

if __name__ == "__main__":
    app.run()
