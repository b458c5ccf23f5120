"""
Celery configuration for the planarize project.

Used for batch analysis: every map of a batch file is analyzed by
``analysis.tasks.analyze_map_task``. With ``CELERY_TASK_ALWAYS_EAGER`` (the
default) the tasks run in-process and no broker is needed.
"""

import os
from celery import Celery

# Set the default Django settings module for the 'celery' program.
os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'planarize.settings')

app = Celery('planarize')

# Using a string here means the worker doesn't have to serialize
# the configuration object to child processes.
app.config_from_object('django.conf:settings', namespace='CELERY')

# Load task modules from all registered Django apps.
app.autodiscover_tasks()

app.conf.timezone = 'America/Mexico_City'
