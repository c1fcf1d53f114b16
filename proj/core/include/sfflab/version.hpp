#pragma once

#define SFF_LAB_VERSION "0.1.0"
