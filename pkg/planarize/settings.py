"""
Django settings for the planarize project.

Exact symbolic toolkit for rational maps from the projective plane to
projective 3-space: planarization test, dual planarizations, base loci,
topological degrees, implicit surfaces and the normal-form catalog.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/5.2/ref/settings/
"""

import environ
from pathlib import Path
from decouple import config
import os

env = environ.Env()

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent
environ.Env.read_env(os.path.join(BASE_DIR, '.env'))


# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = config('SECRET_KEY', default='planarize-insecure-development-key')

# SECURITY WARNING: don't run with debug turned on in production!
DEBUG = config('DEBUG', default=False, cast=bool)

ALLOWED_HOSTS = config('ALLOWED_HOSTS', default='localhost,127.0.0.1,testserver',
                       cast=lambda v: [h.strip() for h in v.split(',') if h.strip()])


# Application definition

INSTALLED_APPS = [
    'planarize.admin.PlanarizeAdminConfig',  # Custom admin with grouped modules
    'django.contrib.auth',
    'django.contrib.contenttypes',
    'django.contrib.sessions',
    'django.contrib.messages',
    'django.contrib.staticfiles',
    'scalars',
    'polys',
    'ratmaps',
    'planarity',
    'catalog',
    'analysis',
]

MIDDLEWARE = [
    'django.middleware.security.SecurityMiddleware',
    'django.contrib.sessions.middleware.SessionMiddleware',
    'django.middleware.common.CommonMiddleware',
    'django.middleware.csrf.CsrfViewMiddleware',
    'django.contrib.auth.middleware.AuthenticationMiddleware',
    'django.contrib.messages.middleware.MessageMiddleware',
    'django.middleware.clickjacking.XFrameOptionsMiddleware',
]

ROOT_URLCONF = 'planarize.urls'

TEMPLATES = [
    {
        'BACKEND': 'django.template.backends.django.DjangoTemplates',
        'DIRS': [],
        'APP_DIRS': True,
        'OPTIONS': {
            'context_processors': [
                'django.template.context_processors.debug',
                'django.template.context_processors.request',
                'django.contrib.auth.context_processors.auth',
                'django.contrib.messages.context_processors.messages',
            ],
        },
    },
]

WSGI_APPLICATION = 'planarize.wsgi.application'


# Database
# The catalog fixture is the only persisted data; sqlite is enough.

DATABASES = {
    'default': env.db('DATABASE_URL', default=f"sqlite:///{BASE_DIR / 'db.sqlite3'}"),
}

FIXTURE_DIRS = [BASE_DIR / 'django_fixtures']


# Internationalization

LANGUAGE_CODE = 'es-mx'
TIME_ZONE = 'America/Mexico_City'
USE_I18N = True
USE_TZ = True


# Static files (CSS, JavaScript, Images)

STATIC_URL = 'static/'

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'


# Planarize toolkit
PLANARIZE_VERSION = '1.0.0'
PLANARIZE_SCHEMA = 1
PLANARIZE_DEFAULT_SEED = config('PLANARIZE_DEFAULT_SEED', default=0, cast=int)
PLANARIZE_DMAX = config('PLANARIZE_DMAX', default=4, cast=int)
PLANARIZE_MULTIPLICITY_DRAWS = config('PLANARIZE_MULTIPLICITY_DRAWS', default=8, cast=int)
PLANARIZE_FIBER_SAMPLES = config('PLANARIZE_FIBER_SAMPLES', default=5, cast=int)
PLANARIZE_CATALOG_FILE = BASE_DIR / 'django_fixtures' / 'normal_forms_fixture.json'
PLANARIZE_LOG_LEVEL = config('PLANARIZE_LOG_LEVEL', default='WARNING')

# Logging: stdout is reserved for CLI output, everything goes to stderr
LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{levelname} {asctime} {name} {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'stream': 'ext://sys.stderr',
            'formatter': 'verbose',
        },
    },
    'loggers': {
        app: {
            'handlers': ['console'],
            'level': PLANARIZE_LOG_LEVEL,
            'propagate': False,
        }
        for app in ('planarize', 'scalars', 'polys', 'ratmaps', 'planarity', 'catalog', 'analysis')
    },
}

# Celery Configuration
# Batch analysis runs eagerly unless a broker is configured explicitly.
CELERY_BROKER_URL = config('CELERY_BROKER_URL', default='redis://localhost:6379/0')
CELERY_RESULT_BACKEND = config('CELERY_RESULT_BACKEND', default='redis://localhost:6379/0')
CELERY_TASK_ALWAYS_EAGER = config('CELERY_TASK_ALWAYS_EAGER', default=True, cast=bool)
CELERY_TASK_EAGER_PROPAGATES = True
CELERY_ACCEPT_CONTENT = ['json']
CELERY_TASK_SERIALIZER = 'json'
CELERY_RESULT_SERIALIZER = 'json'
CELERY_TIMEZONE = 'America/Mexico_City'
CELERY_ENABLE_UTC = True
