from src.harness.edgelist import EdgeListError, parse_edge_list, write_edge_list
from src.harness.enumerate import all_labeled_graphs, canonical_form, random_connected_graph, random_connected_graphs
from src.harness.graph6 import Graph6Error, looks_like_graph6, parse_graph6, read_graph6_lines, write_graph6
from src.harness.survey import SurveyReport, SurveyRow, evaluate_graph, survey, write_survey_csv
