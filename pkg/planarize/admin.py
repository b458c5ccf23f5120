"""
Admin site: the normal-form catalog is listed ahead of the auth models.
"""

from django.contrib import admin
from django.contrib.admin.apps import AdminConfig


class PlanarizeAdminSite(admin.AdminSite):
    site_header = "Planarize - Administración"
    site_title = "Planarize Admin"
    index_title = "Catálogo de formas normales"

    def get_app_list(self, request, app_label=None):
        app_list = super().get_app_list(request, app_label)
        return sorted(app_list, key=lambda app: app['app_label'] != 'catalog')


class PlanarizeAdminConfig(AdminConfig):
    default_site = 'planarize.admin.PlanarizeAdminSite'
