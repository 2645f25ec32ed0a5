# Core types test package 