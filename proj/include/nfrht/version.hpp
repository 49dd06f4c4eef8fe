#pragma once

#define NFRHT_VERSION "0.1.0"
