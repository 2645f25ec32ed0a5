# API tests package 