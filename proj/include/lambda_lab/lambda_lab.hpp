#pragma once

#include "lambda_lab/certificate_json.hpp"
#include "lambda_lab/clique_sum.hpp"
#include "lambda_lab/connectivity.hpp"
#include "lambda_lab/cycles.hpp"
#include "lambda_lab/generators.hpp"
#include "lambda_lab/graph.hpp"
#include "lambda_lab/graph6.hpp"
#include "lambda_lab/minors.hpp"
#include "lambda_lab/report.hpp"
#include "lambda_lab/structure.hpp"
#include "lambda_lab/theorem.hpp"
